i = 10
while i >= 0:
    i -= 1
    if i % 2 == 0:
        print(i)
