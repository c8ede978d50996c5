def has_pair(a, k):
    a = sorted(a)
    i, j = 0, len(a) - 1
    while i < j:
        s = a[i] + a[j]
        if s == k:
            return True
        if s < k:
            i += 1
        else:
            j -= 1
    return False


n, k = map(int, input().split())
print("YES" if has_pair(list(map(int, input().split())), k) else "NO")
