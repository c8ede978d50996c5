s = input().strip()
print(sum(s.count(v) for v in "aeiouy"))
