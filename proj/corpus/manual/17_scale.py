def scale(v, factor):
    v *= factor
    v /= 2
    return v
