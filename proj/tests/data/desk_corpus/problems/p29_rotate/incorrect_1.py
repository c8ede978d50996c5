n, k = map(int, input().split())
a = input().split()
for _ in range(k % n):
    a.append(a.pop(0))
print(" ".join(a))
