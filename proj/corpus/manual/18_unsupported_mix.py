import math
r = math.sqrt(2)
m = max(r, 1)
