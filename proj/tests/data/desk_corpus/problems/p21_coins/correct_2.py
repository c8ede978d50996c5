def min_coins(amount):
    coins = [1, 5, 10, 25]
    best = [0] + [amount + 1] * amount
    for value in range(1, amount + 1):
        for c in coins:
            if c <= value and best[value - c] + 1 < best[value]:
                best[value] = best[value - c] + 1
    return best[amount]


print(min_coins(int(input())))
