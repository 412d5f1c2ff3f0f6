a = {"one": 1, "two": 2}
for e in a:
    print(e)
