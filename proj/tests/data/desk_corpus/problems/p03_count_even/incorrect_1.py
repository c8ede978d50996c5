import sys

nums = list(map(int, sys.stdin.read().split()))
print(sum(1 for x in nums if x % 2 == 0))
