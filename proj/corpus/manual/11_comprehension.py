squares = [v * v for v in range(10)]
print(squares)
