def recursion(x):
    if x is None:
        return
    recursion(x.next)
