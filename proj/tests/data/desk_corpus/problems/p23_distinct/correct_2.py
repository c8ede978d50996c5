def count_distinct(a):
    a = sorted(a)
    count = 0
    for i in range(len(a)):
        if i == 0 or a[i] != a[i - 1]:
            count += 1
    return count


n = int(input())
print(count_distinct(list(map(int, input().split()))))
