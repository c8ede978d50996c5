b, e, m = map(int, input().split())
print(pow(b, e, m))
