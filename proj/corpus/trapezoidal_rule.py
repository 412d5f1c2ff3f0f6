def f(x):
    return x * x


def trapezoid(a, b, n):
    h = (b - a) / n
    total = 0.5 * (f(a) + f(b))
    for k in range(1, n):
        total += f(a + k * h)
    return total * h


lower = float(input("lower bound: "))
upper = 1
steps = 100
result = trapezoid(lower, upper, steps)
if result < 0:
    print("negative area")
else:
    print(result)
