from .config import get_option, option_context, set_option
