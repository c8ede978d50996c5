r, c = map(int, input().split())
best_sum = None
best_row = 0
for i in range(r):
    s = sum(map(int, input().split()))
    if best_sum is None or s > best_sum:
        best_sum = s
        best_row = i + 1
print(best_row)
