"""Type B and type D Temperley-Lieb algebras, exactly."""
