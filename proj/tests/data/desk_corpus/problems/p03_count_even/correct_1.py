n = int(input())
count = 0
for x in map(int, input().split()):
    if x % 2 == 0:
        count += 1
print(count)
