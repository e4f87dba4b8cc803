from typing import Optional


class PolytopeError(ValueError):
    """所有輸入/幾何錯誤的基底類別（CLI 以 exit code 2 回報）"""


class DimensionMismatch(PolytopeError):
    pass


class EmptyPolyhedron(PolytopeError):
    pass


class DegenerateInput(PolytopeError):
    pass


class GeneralPositionError(DegenerateInput):
    pass


class NotSimplicial(PolytopeError):
    pass


class NotPure(PolytopeError):
    pass


class InvalidShelling(PolytopeError):
    pass


class RepresentationMismatch(PolytopeError):
    pass


class NotOnSurface(PolytopeError):
    pass


class InputLimitExceeded(PolytopeError):
    pass


class FileFormatError(PolytopeError):
    """檔案格式錯誤，帶有行號與欄位"""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(self.__str__())

    def __str__(self) -> str:
        if self.line is None:
            return self.message
        if self.column is None:
            return f'line {self.line}: {self.message}'
        return f'line {self.line}, column {self.column}: {self.message}'


class InternalCheckFailure(RuntimeError):
    """定理保證成立的條件失敗（程式錯誤，而非輸入錯誤）"""
