s = input().strip()
ok = s.count("(") == s.count(")") and s[0] == "("
print("YES" if ok else "NO")
