n = int(input())
a = list(map(int, input().split()))
for i in range(n):
    smallest = i
    for j in range(i + 1, n - 1):
        if a[j] < a[smallest]:
            smallest = j
    a[i], a[smallest] = a[smallest], a[i]
print(" ".join(map(str, a)))
