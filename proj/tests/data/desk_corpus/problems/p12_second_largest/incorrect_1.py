input()
a = list(map(int, input().split()))
a.remove(max(a))
print(max(a) if a else -1)
