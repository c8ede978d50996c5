def main():
    input()
    values = sorted(int(x) for x in input().split())
    print(" ".join(map(str, values)))


main()
