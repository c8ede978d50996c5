words = input().split()
result = []
for i in range(len(words) - 1, 0, -1):
    result.append(words[i])
print(" ".join(result))
