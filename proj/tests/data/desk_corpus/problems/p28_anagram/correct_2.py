def counts(word):
    table = [0] * 26
    for ch in word:
        table[ord(ch) - ord("a")] += 1
    return table


a, b = input().split()
if counts(a) == counts(b):
    print("YES")
else:
    print("NO")
