def digit_sum(text):
    return sum(int(ch) for ch in text)


print(digit_sum(input().strip()))
