# Class Ramsey numbers, witness extraction and exhaustive verification
