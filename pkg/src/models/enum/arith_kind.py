from enum import Enum


class ArithKind(str, Enum):
    ADD  = "add"
    SUB  = "sub"
    MUL  = "mul"
    MACC = "macc"
