def fib(n):
    if n < 2:
        return n
    prev = 0
    cur = 1
    for i in range(2, n + 1):
        nxt = prev + cur
        prev = cur
        cur = nxt
    return cur


print(fib(int(input())))
