def main():
    r, c = map(int, input().split())
    sums = [sum(int(x) for x in input().split()) for _ in range(r)]
    print(sums.index(max(sums)) + 1)


main()
