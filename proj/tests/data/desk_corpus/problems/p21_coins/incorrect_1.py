amount = int(input())
used = 0
for coin in (1, 5, 10, 25):
    used += amount // coin
    amount -= (amount // coin) * coin
print(used)
