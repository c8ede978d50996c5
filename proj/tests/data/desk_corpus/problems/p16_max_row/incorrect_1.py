r, c = map(int, input().split())
rows = [list(map(int, input().split())) for _ in range(r)]
best = 0
best_sum = 0
for i in range(r):
    if sum(rows[i]) > best_sum:
        best_sum = sum(rows[i])
        best = i + 1
print(best)
