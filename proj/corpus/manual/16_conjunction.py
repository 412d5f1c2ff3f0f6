if a <= b and b <= c:
    print(b)
