count = 0
while count < 10:
    count += 1
