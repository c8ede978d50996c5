import sys

n = int(input())
for d in range(2, n):
    if n % d == 0:
        print("NO")
        sys.exit()
print("YES")
