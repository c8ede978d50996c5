import sys

tokens = sys.stdin.read().split()
n = int(tokens[0])
s = 0
i = 1
while i < n:
    s += int(tokens[i])
    i += 1
print(s)
