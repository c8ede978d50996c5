def iteration(x):
    for node in x:
        visit(node)
