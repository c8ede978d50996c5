import sys

MOD = 1000000007


def factorial(n):
    if n <= 1:
        return 1
    return n * factorial(n - 1) % MOD


sys.setrecursionlimit(10000)
print(factorial(int(input())))
