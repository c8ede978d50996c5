def is_even(x):
    return x % 2 == 0


input()
values = [int(t) for t in input().split()]
print(len([v for v in values if is_even(v)]))
