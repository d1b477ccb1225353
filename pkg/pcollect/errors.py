"""
This file is part of pcollect which is released under MIT.
See file LICENSE.txt for full license details.
"""


class PcollectError(Exception):
    pass


class ParseError(PcollectError):
    pass


class InvalidInputError(PcollectError):
    pass


class DomainError(PcollectError):
    pass


class ResourceError(PcollectError):
    def __init__(self, cap_name, cap, value=None, stage=None):
        self.cap_name = cap_name
        self.cap = cap
        self.value = value
        self.stage = stage
        message = 'cap {0}={1} exceeded'.format(cap_name, cap)
        if value is not None:
            message += ' (needed {0})'.format(value)
        if stage is not None:
            message += ' in stage {0}'.format(stage)
        super().__init__(message)

    def in_stage(self, stage):
        return ResourceError(self.cap_name, self.cap, self.value, stage)


class UsageError(PcollectError):
    pass


class ConfigError(PcollectError):
    pass


class LibraryLookupError(ConfigError):
    pass


class OutOfScopeError(ConfigError):
    pass


class VerificationError(PcollectError):
    pass
