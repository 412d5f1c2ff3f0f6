x = 7
x %= 3
y = 2
y **= 3
z = x - y
