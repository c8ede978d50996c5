def valid(sides):
    x, y, z = sorted(sides)
    return x + y > z


print("YES" if valid(list(map(int, input().split()))) else "NO")
