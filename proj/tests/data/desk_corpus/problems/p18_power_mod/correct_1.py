def power(b, e, m):
    result = 1 % m
    b %= m
    while e > 0:
        if e & 1:
            result = result * b % m
        b = b * b % m
        e >>= 1
    return result


b, e, m = map(int, input().split())
print(power(b, e, m))
