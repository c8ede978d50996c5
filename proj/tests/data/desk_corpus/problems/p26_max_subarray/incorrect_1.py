from itertools import accumulate

input()
prefix = [0] + list(accumulate(map(int, input().split())))
print(max(prefix) - min(prefix))
