s = input().strip()
half = len(s) // 2
print("YES" if s[:half] == s[half:][::-1] else "NO")
