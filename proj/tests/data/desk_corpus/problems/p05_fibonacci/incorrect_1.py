memo = {}


def fib(n):
    if n <= 2:
        return 1
    if n not in memo:
        memo[n] = fib(n - 1) + fib(n - 2)
    return memo[n]


print(fib(int(input())))
