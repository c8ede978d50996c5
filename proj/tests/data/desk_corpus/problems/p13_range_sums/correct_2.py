from itertools import accumulate


def main():
    n, q = map(int, input().split())
    prefix = [0] + list(accumulate(map(int, input().split())))
    for _ in range(q):
        l, r = map(int, input().split())
        print(prefix[r] - prefix[l - 1])


main()
