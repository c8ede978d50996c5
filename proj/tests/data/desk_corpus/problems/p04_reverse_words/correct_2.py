def reverse_words(line):
    words = line.split()
    out = []
    i = len(words) - 1
    while i >= 0:
        out.append(words[i])
        i -= 1
    return " ".join(out)


print(reverse_words(input()))
