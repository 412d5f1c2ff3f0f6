a = [3, 1, 2]
for e in a:
    print(e)
