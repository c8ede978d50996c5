import heapq


def main():
    input()
    a = list(map(int, input().split()))
    b = list(map(int, input().split()))
    print(" ".join(str(x) for x in heapq.merge(a, b)))


main()
