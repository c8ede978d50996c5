words = sorted(input().split())
best_word = words[0]
best = 0
for w in words:
    c = words.count(w)
    if c >= best:
        best = c
        best_word = w
print(best_word, best)
