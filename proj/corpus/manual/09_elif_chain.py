if x == y:
    print(x)
elif x > y:
    print(y)
else:
    print(0)
