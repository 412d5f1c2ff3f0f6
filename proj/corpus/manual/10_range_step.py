total = 0
for i in range(0, 10, 2):
    total += i
print(total)
