VOWELS = set("aeiou")


def vowels(word):
    return sum(1 for c in word if c in VOWELS)


print(vowels(input().strip()))
