def rotate(a, k):
    n = len(a)
    out = [0] * n
    for i in range(n):
        out[(i + k) % n] = a[i]
    return out


n, k = map(int, input().split())
print(*rotate(list(map(int, input().split())), k))
