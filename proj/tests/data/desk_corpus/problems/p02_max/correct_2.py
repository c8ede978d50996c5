def largest(values):
    return max(values)


def main():
    input()
    print(largest(list(map(int, input().split()))))


if __name__ == "__main__":
    main()
