from triangle_density.cache.codec import PrimeTableCodec, DefaultPrimeTableCodec
from triangle_density.cache.providers import PrimeTableProvider, PrimeTableProviderImpl, resolve_cache_dir
