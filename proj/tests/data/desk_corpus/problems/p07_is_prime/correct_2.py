n = int(input())
prime = n >= 2 and all(n % d != 0 for d in range(2, int(n ** 0.5) + 1))
if prime:
    print("YES")
else:
    print("NO")
