flag = True
if not flag:
    flag = False
