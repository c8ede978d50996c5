def main():
    counts = {}
    for w in input().split():
        counts[w] = counts.get(w, 0) + 1
    best_word = None
    for w in sorted(counts):
        if best_word is None or counts[w] > counts[best_word]:
            best_word = w
    print(best_word, counts[best_word])


main()
