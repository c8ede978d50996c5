from collections import Counter

counts = Counter(input().split())
best = max(counts.values())
word = min(w for w, c in counts.items() if c == best)
print(word, best)
