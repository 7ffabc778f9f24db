import copy


def parity(i):
    """Modulo 2 reduction of an integer index (the bar notation)."""
    return i & 1


def toggle(collection, element):
    """Adds element to a set-like collection over GF(2): an element
    already present cancels out."""
    if element in collection:
        collection.remove(element)
    else:
        collection.add(element)
    return collection


def gf2_sum(elements):
    """Returns the set of elements appearing an odd number of times"""
    acc = set()
    for elem in elements:
        toggle(acc, elem)
    return acc


class Bunch(dict):
    """Collect elements; keys are also attributes"""

    def __init__(self, *args, **kwargs):
        dict.__init__(self, *args, **kwargs)
        self.__dict__ = self

    def __copy__(self):
        return self.__class__({k: v for k, v in self.__dict__.items()})

    def __deepcopy__(self, memodict=None):
        return self.__class__({k: copy.deepcopy(v, memodict)
                               for k, v in self.__dict__.items()})


def merge_dicts(a, b, path=None, overwrite=True):
    """recursively merges b into a; nested dictionaries are merged
    key by key. If overwrite is False, conflicting leaves raise."""
    if path is None:
        path = []

    for key in b:
        if key in a:
            if isinstance(a[key], dict) and isinstance(b[key], dict):
                merge_dicts(a[key], b[key], path + [str(key)], overwrite)
            elif a[key] == b[key]:
                pass  # same leaf value
            elif overwrite:
                a[key] = b[key]
            else:
                raise ValueError(
                    'Conflict at %s' % '.'.join(path + [str(key)]))
        else:
            a[key] = b[key]
    return a


class UnionFind(object):
    """Disjoint sets over 0..size-1 with path halving"""

    def __init__(self, size):
        self.nodes = list(range(size))

    def union(self, n1, n2):
        p1 = self.find(n1)
        p2 = self.find(n2)
        if p1 != p2:
            # the smaller index stays the root
            self.nodes[max(p1, p2)] = min(p1, p2)

    def find(self, n):
        nodes = self.nodes
        while nodes[n] != n:
            nodes[n] = nodes[nodes[n]]
            n = nodes[n]
        return n

    def get_clusters(self):
        """Clusters as sorted index lists, ordered by smallest member"""
        clusters = {}
        for node in range(len(self.nodes)):
            clusters.setdefault(self.find(node), []).append(node)
        return [clusters[root] for root in sorted(clusters)]
