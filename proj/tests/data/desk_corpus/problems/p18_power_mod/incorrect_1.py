b, e, m = map(int, input().split())
result = b % m
for _ in range(1, e):
    result = result * b % m
print(result)
