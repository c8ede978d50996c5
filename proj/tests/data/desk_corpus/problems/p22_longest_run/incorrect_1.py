n = int(input())
a = list(map(int, input().split()))
best = 1
length = 1
for i in range(1, n):
    length = length + 1 if a[i] >= a[i - 1] else 1
    best = max(best, length)
print(best)
