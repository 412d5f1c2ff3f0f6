items = []
lookup = {}
values = [1, 2]
values[0] = values[1]
