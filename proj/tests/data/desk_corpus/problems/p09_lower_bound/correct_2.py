import bisect


def main():
    n, x = map(int, input().split())
    values = list(map(int, input().split()))
    print(bisect.bisect_left(values, x))


main()
