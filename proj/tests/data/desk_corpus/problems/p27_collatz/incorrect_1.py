def steps(n):
    if n == 1:
        return 1
    if n % 2 == 0:
        return 1 + steps(n // 2)
    return 1 + steps(3 * n + 1)


print(steps(int(input())))
