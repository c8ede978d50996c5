def max_subarray(a):
    best = a[0]
    for i in range(len(a)):
        total = 0
        for j in range(i, len(a)):
            total += a[j]
            if total > best:
                best = total
    return best


input()
print(max_subarray(list(map(int, input().split()))))
