def bubble_sort(items):
    n = len(items)
    swapped = True
    while swapped:
        swapped = False
        for i in range(1, n):
            if items[i - 1] > items[i]:
                tmp = items[i - 1]
                items[i - 1] = items[i]
                items[i] = tmp
                swapped = True
        n -= 1
    return items


data = [5, 1, 4, 2, 8]
bubble_sort(data)
for value in data:
    print(value)
