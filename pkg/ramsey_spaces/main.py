import logging
import signal
import sys

from dotenv import load_dotenv

from ramsey_spaces.application.search.cancellation import CancellationToken
from ramsey_spaces.presentation.cli import run

load_dotenv()

# ログの設定 (レポートは標準出力、ログは標準エラー)
logging.basicConfig(level=logging.INFO, format="%(asctime)s - %(levelname)s - %(message)s")
logger = logging.getLogger(__name__)

EXIT_INTERNAL_ERROR = 1


def main() -> None:
    token = CancellationToken()

    # Ctrl+C で探索を打ち切り、そこまでの結果を exhausted として出す
    signal.signal(signal.SIGINT, lambda *_: token.cancel())

    try:
        code = run(sys.argv[1:], token=token)
    except Exception as e:
        logger.exception("実行エラー")
        print(f"実行できませんでした:\n{e}", file=sys.stderr)
        code = EXIT_INTERNAL_ERROR

    sys.exit(code)


if __name__ == "__main__":
    main()
