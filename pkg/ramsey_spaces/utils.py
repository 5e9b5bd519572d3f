from collections.abc import Callable


def split_spec(text: str, sep: str = ":") -> tuple[str, list[str]]:
    """
    "kind:arg1:arg2" 形式の指定文字列を種類と引数に分ける。

    Args:
        text (str): 指定文字列 (例: "mod:2", "swap:1:2")
        sep (str, optional): 区切り文字. デフォルトは":".

    Returns:
        tuple[str, list[str]]: 種類と、空白を除いた引数のリスト

    """
    kind, *args = text.strip().split(sep)
    return kind.strip().lower(), [arg.strip() for arg in args]


def parse_numbers[T: (int, float)](
    data_str: str, dtype: Callable[[str], T], sep: str = ","
) -> list[T]:
    """区切り文字で並んだ数値を指定の型に変換。空の要素は無視する"""
    return [dtype(x.strip()) for x in data_str.split(sep) if x.strip()]
