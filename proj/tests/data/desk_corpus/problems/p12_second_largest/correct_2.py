def second_largest(a):
    first = second = None
    for x in a:
        if first is None or x > first:
            second = first
            first = x
        elif x != first and (second is None or x > second):
            second = x
    return -1 if second is None else second


input()
print(second_largest(list(map(int, input().split()))))
