def longest_run(a):
    best = 0
    start = 0
    for i in range(len(a)):
        if i > 0 and a[i] <= a[i - 1]:
            start = i
        best = max(best, i - start + 1)
    return best


input()
print(longest_run(list(map(int, input().split()))))
