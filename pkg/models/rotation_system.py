class RotationSystem:
    """Rotation system model class.

    Maps every vertex to the clockwise cyclic order of its neighbours. Faces are
    traced by turning from dart (u, v) to (v, w) where w follows u around v.
    """

    def __init__(self, rotation):
        """Initialize a rotation system from a vertex -> neighbour sequence map."""
        self.rotation = {v: tuple(nbrs) for v, nbrs in rotation.items()}
        for v, nbrs in self.rotation.items():
            if len(set(nbrs)) != len(nbrs):
                raise ValueError(f"Repeated neighbour in the rotation at {v}")
            for u in nbrs:
                if v not in self.rotation.get(u, ()):
                    raise ValueError(f"Edge {v}-{u} is missing from the rotation at {u}")

    @property
    def vertex_count(self):
        return len(self.rotation)

    @property
    def edge_count(self):
        return sum(len(nbrs) for nbrs in self.rotation.values()) // 2

    def successor(self, v, u):
        """Neighbour following u in the clockwise order at v."""
        nbrs = self.rotation[v]
        return nbrs[(nbrs.index(u) + 1) % len(nbrs)]

    def faces(self):
        """Trace the faces; each face is the tuple of dart tails along its walk."""
        visited = set()
        faces = []
        for v, nbrs in self.rotation.items():
            for u in nbrs:
                if (v, u) in visited:
                    continue
                walk = []
                dart = (v, u)
                while dart not in visited:
                    visited.add(dart)
                    walk.append(dart[0])
                    a, b = dart
                    dart = (b, self.successor(b, a))
                faces.append(tuple(walk))
        return faces

    def euler_characteristic(self):
        """V - E + F, counting an isolated vertex as carrying one face."""
        isolated = sum(1 for nbrs in self.rotation.values() if not nbrs)
        return self.vertex_count - self.edge_count + len(self.faces()) + isolated

    def is_spherical(self, components=1):
        """Genus-zero test for an embedding with the given number of components."""
        return self.euler_characteristic() == 2 * components

    def to_dict(self):
        return {v: list(nbrs) for v, nbrs in self.rotation.items()}

    @classmethod
    def from_dict(cls, data):
        return cls(data)
