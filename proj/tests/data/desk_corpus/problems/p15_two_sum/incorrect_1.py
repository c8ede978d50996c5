n, k = map(int, input().split())
a = list(map(int, input().split()))
answer = "NO"
for i in range(n):
    for j in range(i, n):
        if a[i] + a[j] == k:
            answer = "YES"
print(answer)
