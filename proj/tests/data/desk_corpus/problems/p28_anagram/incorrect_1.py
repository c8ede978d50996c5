a, b = input().split()
same = len(a) == len(b) and all(ch in b for ch in a)
print("YES" if same else "NO")
